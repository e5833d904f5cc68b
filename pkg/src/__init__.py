"""
Egonet Paradox
Friendship-paradox statistics and contact-volume spreading simulations
"""

__version__ = "1.0.0"
__author__ = "Egonet Paradox Team"
