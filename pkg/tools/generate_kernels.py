"""Regenerate src/p4p/_kernels.py from src/p4p/data/coefficients.txt."""

from pathlib import Path

from p4p.polynomials import generate_kernel_module

TARGET = Path(__file__).resolve().parents[1] / "src" / "p4p" / "_kernels.py"

if __name__ == "__main__":
    TARGET.write_text(generate_kernel_module())
    print(f"wrote {TARGET}")
