"""Optional matplotlib: the demos print their numbers either way."""

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:  # plotting is an optional extra
    plt = None


def save(fig, name):
    fig.tight_layout()
    fig.savefig(name, dpi=120)
    print(f"wrote {name}")
