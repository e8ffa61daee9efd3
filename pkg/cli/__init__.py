"""CLI layer - generate, partialize, solve, eval and bench commands."""
