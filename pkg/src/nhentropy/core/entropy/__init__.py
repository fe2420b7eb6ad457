# src/nhentropy/core/entropy/__init__.py
# 熵泛函与熵产生率
from .functionals import K_B, entropy_from_probabilities, rate_nh, rate_vn, s_nh, s_vn
from .profile import EntropySample, entropy_profile, entropy_profile_log

__all__ = [
    "K_B",
    "entropy_from_probabilities",
    "rate_nh",
    "rate_vn",
    "s_nh",
    "s_vn",
    "EntropySample",
    "entropy_profile",
    "entropy_profile_log",
]
