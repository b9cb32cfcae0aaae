# core/__init__.py

"""Core package: groups, characters, gamma filtration, Chern polynomials, F2 algebras, cohomology bridge, pipeline"""
