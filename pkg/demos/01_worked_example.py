"""The 4x4 example grid, encoded classically and with a threshold of 10.

Values go past 255 here, so the grid is treated as a plain integer
sequence rather than as pixels.
"""
from erle import encode_runs_scalar, run_length_histogram

grid = [100, 101, 102, 100,
        200, 200, 205, 209,
        300, 300, 305, 301,
        210, 205, 300, 300]

classic = encode_runs_scalar(grid, th=0)
enhanced = encode_runs_scalar(grid, th=10)


def show(runs):
    return ", ".join(f"{v}({c})" for v, c in runs)


print("pixels:   ", len(grid))
print("classic:  ", len(classic), "records ->", show(classic))
print("enhanced: ", len(enhanced), "records ->", show(enhanced))

# run-length histograms, the numbers behind a bar chart of run counts
print("classic histogram: ", run_length_histogram(classic))
print("enhanced histogram:", run_length_histogram(enhanced))

# the textbook string example
print("11112222333111 ->", show(encode_runs_scalar([int(c) for c in "11112222333111"])))
