"""Integration tests for pcurv."""
