"""Define the "graphs" package: labeled graphs, embeddings and generators."""
