"""Solver layer - Borda baselines, LADS and the hybrid evolutionary search."""
