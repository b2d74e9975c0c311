"""Exact arithmetic and finite-precision certification for representations of
F_q[theta], their omega- and L-values, digit representations of GL_2(F_q[theta]),
vectorial Eisenstein series and the Nagao amalgam."""

__version__ = "0.1.0"
