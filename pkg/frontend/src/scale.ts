/** Linear data-to-pixel mapping with a degenerate-domain guard. */

export class LinearScale {
  private readonly span: number;

  constructor(
    readonly d0: number,
    readonly d1: number,
    readonly r0: number,
    readonly r1: number,
  ) {
    this.span = d1 - d0;
  }

  map(v: number): number {
    if (this.span === 0) {
      return (this.r0 + this.r1) / 2;
    }
    return this.r0 + ((v - this.d0) / this.span) * (this.r1 - this.r0);
  }

  invert(px: number): number {
    if (this.r1 === this.r0) {
      return this.d0;
    }
    return this.d0 + ((px - this.r0) / (this.r1 - this.r0)) * this.span;
  }
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!isFinite(lo)) {
    return [0, 1];
  }
  return [lo, hi];
}
