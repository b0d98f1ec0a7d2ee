"""Simulation and design-analysis toolkit for the zero-field Fe3+:sapphire
whispering-gallery maser."""

__version__ = "0.1.0"
