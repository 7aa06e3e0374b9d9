"""Domain layer: exact algebra for differential operators."""
