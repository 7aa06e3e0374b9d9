"""Application layer: command DTOs, use cases, dispatch and report serialization."""
