"""Federated training of a small 3D CNN with encrypted parameter aggregation.

The package is organised around eight pieces: a from-scratch neural network
core (``fedlwe.nn``), volume preprocessing (``fedlwe.preprocess``), a
synthetic CT-like data generator (``fedlwe.synthgen``), an additively
homomorphic LWE cryptosystem (``fedlwe.lwe``), a binary wire protocol
(``fedlwe.protocol``), the federation server and client runtimes
(``fedlwe.server``, ``fedlwe.client``), and an evaluation harness
(``fedlwe.metrics``, ``fedlwe.gradcam``, ``fedlwe.costmodel``,
``fedlwe.experiment``) tied together by the ``fedlwe`` CLI.

Hot numeric kernels live in ``fedlwe.kernels`` and run through numba by
default with a pure-numpy fallback selected via ``FLW_BACKEND=numpy``.
"""

__version__ = "0.1.0"
