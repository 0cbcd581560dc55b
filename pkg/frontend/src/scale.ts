/**
 * Axis scales and tick generation for the plot layout.
 *
 * The y range is taken from robust quantiles (2%..98%) of the displayed
 * values so the z^-3 near-field blow-up cannot flatten every other curve;
 * points outside the range are clamped to the plot border.  Pure functions of
 * the inputs, so rendering stays reproducible.
 */

export interface Scale {
  kind: 'log' | 'linear'
  domain: [number, number]
  range: [number, number]
  map(value: number): number
}

export function makeScale(kind: 'log' | 'linear', domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain
  const [r0, r1] = range
  if (kind === 'log' && (d0 <= 0 || d1 <= 0)) {
    throw new Error(`log scale needs a positive domain, got [${d0}, ${d1}]`)
  }
  const span = kind === 'log' ? Math.log10(d1) - Math.log10(d0) : d1 - d0
  const map = (value: number): number => {
    const t =
      span === 0
        ? 0.5
        : kind === 'log'
          ? (Math.log10(value) - Math.log10(d0)) / span
          : (value - d0) / span
    const clamped = Math.min(1, Math.max(0, t))
    return r0 + clamped * (r1 - r0)
  }
  return { kind, domain, range, map }
}

/** Decade ticks for log scales, 1-2-5 progression for linear ones. */
export function ticks(scale: Scale, maxCount = 8): number[] {
  const [d0, d1] = scale.domain
  if (scale.kind === 'log') {
    const lo = Math.ceil(Math.log10(d0) - 1e-9)
    const hi = Math.floor(Math.log10(d1) + 1e-9)
    const out: number[] = []
    let stride = 1
    while ((hi - lo) / stride + 1 > maxCount) stride += 1
    for (let e = lo; e <= hi; e += stride) out.push(10 ** e)
    return out.length >= 2 ? out : [d0, d1]
  }
  const span = d1 - d0
  if (span <= 0) return [d0]
  const rawStep = span / (maxCount - 1)
  const mag = 10 ** Math.floor(Math.log10(rawStep))
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => span / s <= maxCount - 1) ?? 10 * mag
  const first = Math.ceil(d0 / step) * step
  const out: number[] = []
  for (let v = first; v <= d1 + 1e-12 * span; v += step) out.push(v)
  return out
}

export function quantile(sorted: number[], q: number): number {
  if (sorted.length === 0) throw new Error('quantile of empty array')
  const pos = q * (sorted.length - 1)
  const base = Math.floor(pos)
  const rest = pos - base
  const lo = sorted[base] ?? 0
  const hi = sorted[Math.min(base + 1, sorted.length - 1)] ?? lo
  return lo + rest * (hi - lo)
}

/** Robust y-limits in display units, padded by 5%. */
export function robustYRange(values: number[]): [number, number] {
  const sorted = [...values].sort((a, b) => a - b)
  let lo = quantile(sorted, 0.02)
  let hi = quantile(sorted, 0.98)
  if (lo === hi) {
    const pad = Math.abs(lo) > 0 ? 0.1 * Math.abs(lo) : 1
    return [lo - pad, hi + pad]
  }
  const pad = 0.05 * (hi - lo)
  return [lo - pad, hi + pad]
}

export function formatTick(value: number): string {
  if (value === 0) return '0'
  const abs = Math.abs(value)
  if (abs >= 0.01 && abs < 10000) {
    return Number(value.toPrecision(4)).toString()
  }
  const exp = Math.floor(Math.log10(abs))
  const mant = value / 10 ** exp
  const m = Number(mant.toPrecision(3))
  return m === 1 ? `1e${exp}` : m === -1 ? `-1e${exp}` : `${m}e${exp}`
}
