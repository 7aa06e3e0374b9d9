"""Performance tests for pcurv."""
