"""mimicarm: robot-free demonstration collection.

Ingests recorded RGB-D sessions with hand keypoints, retargets the hand motion
to a simulated 7-DoF arm, supports interactive keypoint placement with
collision-checked previews, and exports behavior-cloning training data.
"""

__version__ = "0.1.0"
