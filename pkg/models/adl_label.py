# models/adl_label.py
from enum import IntEnum

from errors import UnknownLabelError


class AdlLabel(IntEnum):
    """The five activities of daily living, with their fixed class codes."""
    Running = 0
    Walking = 1
    GoingUpstairs = 2
    GoingDownstairs = 3
    Standing = 4

    @classmethod
    def from_name(cls, name):
        """Look up a label by name, ignoring case and underscores."""
        key = name.strip().replace("_", "").lower()
        for label in cls:
            if label.name.lower() == key:
                return label
        raise UnknownLabelError(f"unknown ADL '{name}'")
