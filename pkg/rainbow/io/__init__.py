"""Point-set and witness file formats."""
