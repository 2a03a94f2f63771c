# qtorus: exact computations in quantum tori
