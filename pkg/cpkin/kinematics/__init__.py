"""One-parameter planar motions and the curvature theory of their instants"""
