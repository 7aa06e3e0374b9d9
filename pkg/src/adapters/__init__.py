"""Adapters: expression parsing and the operator catalog."""
