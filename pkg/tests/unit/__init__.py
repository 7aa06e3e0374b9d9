"""Unit tests for pcurv."""
