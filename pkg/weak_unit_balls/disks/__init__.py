"""Define the "disks" package: weak unit disk constructions on the integer lattice."""
