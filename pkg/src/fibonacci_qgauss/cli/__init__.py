"""CLI commands for Fibonacci q-Gauss."""
