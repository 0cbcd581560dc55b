/**
 * Per-figure presentation specs: axes, unit scaling and the route -> style map.
 *
 * Every route that can appear in an input CSV is either mapped to a style or
 * listed in `skipRoutes`; anything else is a schema error at render time.
 * All physics values come from the CSV; the only numeric work here is unit
 * scaling for the axes (potentials are displayed in units of 1e-27 J).
 */

import { SchemaError } from './csv'

export interface CurveStyle {
  color: string
  dash: string // SVG stroke-dasharray, '' = solid
}

export interface FigureSpec {
  id: number
  xScale: 'log' | 'linear'
  xLabel: string
  yLabel: string
  yUnit: number
  routeColors: Record<string, string>
  skipRoutes: string[]
  expectedCurves: number
}

export const Y_UNIT = 1e-27 // J, the display unit of every potential axis

const BLUE = '#1f77b4'
const GREEN = '#2ca02c'
const RED = '#d62728'
const BLACK = '#000000'

// routes that may appear in CLI output but are never plotted as figure curves
const ALWAYS_SKIPPED = ['u0', 'u1', 'light']

const SPECS: Record<number, Omit<FigureSpec, 'id'>> = {
  1: {
    xScale: 'log',
    xLabel: 'z [m]',
    yLabel: 'U [1e-27 J]',
    yUnit: Y_UNIT,
    routeColors: { pert: BLUE, perreault: GREEN },
    skipRoutes: ALWAYS_SKIPPED,
    expectedCurves: 2,
  },
  2: {
    xScale: 'log',
    xLabel: 'z [m]',
    yLabel: 'U [1e-27 J]',
    yUnit: Y_UNIT,
    routeColors: { pert: BLUE, undriven: BLACK },
    skipRoutes: ALWAYS_SKIPPED,
    expectedCurves: 4,
  },
  3: {
    xScale: 'log',
    xLabel: 'z [m]',
    yLabel: 'U [1e-27 J]',
    yUnit: Y_UNIT,
    routeColors: { bloch: GREEN, undriven: BLACK },
    skipRoutes: ALWAYS_SKIPPED,
    expectedCurves: 4,
  },
  4: {
    xScale: 'linear',
    xLabel: 't [s]',
    yLabel: 'U [1e-27 J]',
    yUnit: Y_UNIT,
    routeColors: { bloch: BLUE },
    skipRoutes: ALWAYS_SKIPPED,
    expectedCurves: 2,
  },
  5: {
    xScale: 'log',
    xLabel: 'z [m]',
    yLabel: 'U [1e-27 J]',
    yUnit: Y_UNIT,
    routeColors: { pert: BLUE, bloch: GREEN, undriven: BLACK, perreault: RED },
    skipRoutes: ALWAYS_SKIPPED,
    expectedCurves: 3,
  },
}

export const FIGURE_IDS = [1, 2, 3, 4, 5]

export function figureSpec(id: number): FigureSpec {
  const spec = SPECS[id]
  if (!spec) throw new SchemaError(`unknown figure id ${id}; expected one of ${FIGURE_IDS.join(', ')}`)
  return { id, ...spec }
}

/** Distinct per-curve styles: route color, lightened per repeat, cycled dashes. */
export function assignStyles(
  spec: FigureSpec,
  curves: { key: string; route: string }[],
): Map<string, CurveStyle> {
  const dashes = ['', '8 4', '2 3', '7 2 2 2']
  const seenPerRoute = new Map<string, number>()
  const styles = new Map<string, CurveStyle>()
  for (const curve of curves) {
    if (spec.skipRoutes.includes(curve.route)) continue
    const base = spec.routeColors[curve.route]
    if (!base) {
      throw new SchemaError(
        `route '${curve.route}' has no style in figure ${spec.id} and is not skipped`,
      )
    }
    const repeat = seenPerRoute.get(curve.route) ?? 0
    seenPerRoute.set(curve.route, repeat + 1)
    styles.set(curve.key, {
      color: lighten(base, repeat * 0.18),
      dash: dashes[repeat % dashes.length] ?? '',
    })
  }
  return styles
}

function lighten(hex: string, amount: number): string {
  const n = parseInt(hex.slice(1), 16)
  const mix = (channel: number) => Math.min(255, Math.round(channel + (255 - channel) * amount))
  const r = mix((n >> 16) & 0xff)
  const g = mix((n >> 8) & 0xff)
  const b = mix(n & 0xff)
  return `#${((r << 16) | (g << 8) | b).toString(16).padStart(6, '0')}`
}
