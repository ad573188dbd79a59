"""Infrastructure layer: simulation engine, experiment harness, files and CLI."""
