"""Exception types shared across the pipeline.

Every error carries a stable ``code`` string so the service layer can map
exceptions to structured HTTP error bodies without string matching.
"""


class MimicArmError(Exception):
    code = "internal"

    def __init__(self, message: str = ""):
        super().__init__(message or self.__class__.__name__)


# geometry / camera
class InvalidDepth(MimicArmError):
    code = "invalid_depth"


class OutOfBounds(MimicArmError):
    code = "out_of_bounds"


class BehindCamera(MimicArmError):
    code = "behind_camera"


# kinematics
class JointLimitViolation(MimicArmError):
    code = "joint_limit_violation"


class Unreachable(MimicArmError):
    code = "unreachable"


class ChainFormatError(MimicArmError):
    code = "chain_format"


# scene
class EmptyFrame(MimicArmError):
    code = "empty_frame"


class NoPlaneFound(MimicArmError):
    code = "no_plane_found"


class GridTooLarge(MimicArmError):
    code = "grid_too_large"


# hand tracking
class TooFewValidPoints(MimicArmError):
    code = "too_few_valid_points"


class DegenerateHand(MimicArmError):
    code = "degenerate_hand"


# demonstration sessions
class UnreachableKeypoint(MimicArmError):
    code = "unreachable_keypoint"


class PlanningFailed(MimicArmError):
    code = "planning_failed"


class AllSamplesUnreachable(MimicArmError):
    code = "all_samples_unreachable"


class EmptySession(MimicArmError):
    code = "empty_session"


class SessionStateError(MimicArmError):
    code = "session_state"


class WrongMode(MimicArmError):
    code = "wrong_mode"


# scene anchoring (service)
class NoPlane(MimicArmError):
    code = "no_plane"


class PointOffPlane(MimicArmError):
    code = "point_off_plane"


class SceneNotFound(MimicArmError):
    code = "scene_not_found"


class SceneCorrupt(MimicArmError):
    code = "scene_corrupt"


# export
class OutOfWorkspace(MimicArmError):
    code = "out_of_workspace"


class DimensionMismatch(MimicArmError):
    code = "dimension_mismatch"


class MissingMask(MimicArmError):
    code = "missing_mask"


class ArchiveError(MimicArmError):
    code = "archive_invalid"
