"""Tests package for pcurv."""
