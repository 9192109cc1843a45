"""Write a BMP, look at its header, read it back, compress it both ways."""
import numpy as np

from erle import (ImageBuffer, decode, deserialize, encode_classic, encode_enhanced,
                  max_channel_error, parse_bmp, read_header, serialize, write_bmp)

rng = np.random.default_rng(0)
# a 5-pixel-wide image: 15 data bytes per row, padded to 16
img = ImageBuffer.from_array(rng.integers(0, 256, size=(3, 5, 3), dtype=np.uint8))
data = write_bmp(img)
print(f"{len(data)} bytes on disk for {img.width}x{img.height}")
for field, value in vars(read_header(data)).items():
    print(f"  {field}: {value}")

assert parse_bmp(data) == img
print("parse_bmp(write_bmp(img)) == img")

# classic RLE is lossless; random pixels mostly form runs of 1
blob = serialize("classic", 0, img.width, img.height, encode_classic(img))
back = decode(deserialize(blob).runs(), img.width, img.height)
print(f"classic container: {len(blob)} bytes, exact: {back == img}")

blob = serialize("enhanced", 60, img.width, img.height, encode_enhanced(img, 60))
back = decode(deserialize(blob).runs(), img.width, img.height)
print(f"enhanced th=60 container: {len(blob)} bytes, "
      f"max channel error {max_channel_error(img, back)}")
