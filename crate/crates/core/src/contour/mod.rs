//! Contour analytics (stub while building bottom-up).
