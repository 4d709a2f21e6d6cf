"""Exception types for kinematic and numerical failure modes."""


class LepscatError(Exception):
    """Base class for all package errors."""


class DomainError(LepscatError, ValueError):
    """Input outside its physical domain (negative field strength, NaN, ...)."""


class DegenerateFieldError(LepscatError):
    """Laser frequency is zero, so the field four-potential is ill-defined."""


class CollinearLightlikeError(LepscatError):
    """k.p vanished: the momentum is collinear with the lightlike wave vector."""


class KinematicsError(LepscatError):
    """No physical final-state energy satisfies the mass-shell condition."""


class ChannelClosedError(KinematicsError):
    """Photon channel is kinematically closed (too many photons emitted)."""


class SingularKinematicsError(LepscatError):
    """Squared four-momentum transfer is numerically zero (propagator pole)."""


class InternalConsistencyError(LepscatError):
    """A quantity that must be real or self-consistent came out otherwise."""
