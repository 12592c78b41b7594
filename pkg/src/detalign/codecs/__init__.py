"""Coding schemes for the three channel families, plus invertible sets."""

from .codebook import Codebook, DecodeOutcome, ImageTable, invertible_set
from .model1 import Model1Mode, ModelIParams, model1_decode, model1_derive, model1_encode
from .model2 import ModelIIParams, model2_decode, model2_derive, model2_encode
from .model3 import (
    CenterMode,
    CodebookMode,
    ModelIIIDecodeTrace,
    ModelIIIParams,
    model3_decode,
    model3_derive,
    model3_encode,
)

__all__ = [
    "Codebook",
    "DecodeOutcome",
    "ImageTable",
    "invertible_set",
    "Model1Mode",
    "ModelIParams",
    "model1_derive",
    "model1_encode",
    "model1_decode",
    "ModelIIParams",
    "model2_derive",
    "model2_encode",
    "model2_decode",
    "CenterMode",
    "CodebookMode",
    "ModelIIIDecodeTrace",
    "ModelIIIParams",
    "model3_derive",
    "model3_encode",
    "model3_decode",
]
