"""Static figures of the plane and of instants, as SVG with CSV point dumps"""
