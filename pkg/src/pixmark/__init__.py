"""Digital image watermarking in the spatial and frequency domains."""

from .errors import *  # noqa: F401,F403
from .frequency import (
    EmbedParams,
    dct_embed,
    dct_extract,
    dwt_embed,
    dwt_extract,
    qim_embed_value,
    qim_extract_value,
)
from .image_io import (
    BitPayload,
    GrayImage,
    image_from_payload,
    payload_from_image,
    read_pgm,
    write_pgm,
)
from .metrics import QualityReport, ber, capacity, histogram, mse, psnr, quality_report
from .spatial import (
    DeMetadata,
    PixelPair,
    de_embed,
    de_extract_restore,
    de_is_expandable,
    lsb_embed,
    lsb_extract,
)
from .transforms import SubBands, dct2, haar_forward, haar_inverse, idct2, partition_blocks, reassemble

__version__ = "0.1.0"
