"""Exact reconstruction of the Griess algebras generated by two Ising vectors
whose tau-involutions generate S3, with the surrounding Virasoro and fusion data."""

__version__ = "0.1.0"
