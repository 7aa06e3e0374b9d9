"""Infrastructure layer - External concerns."""