"""Define the "intervals" package: weak unit interval solving and constructions."""
