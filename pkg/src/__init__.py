"""realauto source package."""
