"""
Example motions and instants, packaged as JSON resources

Load them by location, e.g. ``cpkin.import_motion("cpkin.motions.cycloid")``.
"""
