"""Domain layer: the smart home, its apps, scenarios and misordering analysis."""

# Subpackages are imported explicitly to keep the import graph acyclic
