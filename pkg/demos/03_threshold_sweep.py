"""How the threshold trades size against fidelity.

A raising threshold lets each run absorb more neighbours, so the ratio
climbs and PSNR falls. Pure noise is the worst case for classic RLE: one
record per pixel, 4 bytes where the BMP spends 3.
"""
from erle import fixtures, metrics

images = {
    "gradient": fixtures.horizontal_gradient(256, 256),
    "noisy photo-like": fixtures.noisy_gradient(256, 192, amplitude=4, seed=1),
    "noise": fixtures.noise(128, 128, seed=2),
}

for name, img in images.items():
    print(f"\n{name} ({img.width}x{img.height})")
    print(f"{'th':>4} {'classic':>8} {'enhanced':>9} {'max err':>8} {'psnr dB':>8}")
    for th in (0, 1, 2, 5, 10, 20, 40):
        rep = metrics.ratio_report(name, img, th)
        print(f"{th:>4} {metrics.format_ratio(rep.classic_ratio):>8} "
              f"{metrics.format_ratio(rep.enhanced_ratio):>9} "
              f"{rep.max_channel_error:>8} {rep.psnr_db:>8.2f}")
