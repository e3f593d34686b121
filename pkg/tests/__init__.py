"""Test package for functidom."""
