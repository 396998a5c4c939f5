"""Test suite for DocImp analyzer package."""
