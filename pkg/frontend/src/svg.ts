/**
 * SVG rendering of one figure: axes with ticks, one polyline per curve
 * (class="curve"), and a legend whose text comes from the CSV metadata.
 * Output depends only on (curves, spec); no timestamps or randomness.
 */

import { CurveSeries } from './csv'
import { CurveStyle, FigureSpec } from './figures'
import { formatTick, makeScale, robustYRange, Scale, ticks } from './scale'

export const WIDTH = 760
export const HEIGHT = 480
const MARGIN = { left: 78, right: 24, top: 20, bottom: 52 }

export interface Layout {
  x: Scale
  y: Scale
}

function esc(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;').replace(/"/g, '&quot;')
}

export function layoutFor(spec: FigureSpec, curves: CurveSeries[]): Layout {
  const xs = curves.flatMap((c) => c.x)
  const ys = curves.flatMap((c) => c.y.map((v) => v / spec.yUnit))
  const x = makeScale(spec.xScale, [Math.min(...xs), Math.max(...xs)], [MARGIN.left, WIDTH - MARGIN.right])
  const y = makeScale('linear', robustYRange(ys), [HEIGHT - MARGIN.bottom, MARGIN.top])
  return { x, y }
}

function polylinePoints(curve: CurveSeries, spec: FigureSpec, layout: Layout): string {
  const parts: string[] = []
  for (let i = 0; i < curve.x.length; i++) {
    const px = layout.x.map(curve.x[i] ?? 0)
    const py = layout.y.map((curve.y[i] ?? 0) / spec.yUnit)
    parts.push(`${px.toFixed(2)},${py.toFixed(2)}`)
  }
  return parts.join(' ')
}

export function renderSvg(
  spec: FigureSpec,
  curves: CurveSeries[],
  styles: Map<string, CurveStyle>,
): string {
  const drawn = curves.filter((c) => styles.has(c.key))
  if (drawn.length === 0) throw new Error('nothing to draw: every curve was skipped')
  const layout = layoutFor(spec, drawn)
  const [x0, x1] = layout.x.range
  const [yBottom, yTop] = layout.y.range

  const out: string[] = []
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="Helvetica, Arial, sans-serif" font-size="12">`,
  )
  out.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>`)

  // plot frame
  out.push(
    `<rect x="${x0}" y="${yTop}" width="${x1 - x0}" height="${yBottom - yTop}" ` +
      `fill="none" stroke="#444444" stroke-width="1"/>`,
  )

  // x ticks
  for (const t of ticks(layout.x)) {
    const px = layout.x.map(t)
    out.push(`<line x1="${px.toFixed(2)}" y1="${yBottom}" x2="${px.toFixed(2)}" y2="${yBottom + 5}" stroke="#444444"/>`)
    out.push(
      `<text x="${px.toFixed(2)}" y="${yBottom + 18}" text-anchor="middle">${esc(formatTick(t))}</text>`,
    )
  }
  // y ticks and zero line
  for (const t of ticks(layout.y, 7)) {
    const py = layout.y.map(t)
    out.push(`<line x1="${x0 - 5}" y1="${py.toFixed(2)}" x2="${x0}" y2="${py.toFixed(2)}" stroke="#444444"/>`)
    out.push(
      `<text x="${x0 - 8}" y="${(py + 4).toFixed(2)}" text-anchor="end">${esc(formatTick(t))}</text>`,
    )
  }
  const [yLo, yHi] = layout.y.domain
  if (yLo < 0 && yHi > 0) {
    const py = layout.y.map(0)
    out.push(
      `<line x1="${x0}" y1="${py.toFixed(2)}" x2="${x1}" y2="${py.toFixed(2)}" ` +
        `stroke="#bbbbbb" stroke-width="0.8" stroke-dasharray="3 3"/>`,
    )
  }

  // axis labels
  out.push(
    `<text x="${(x0 + x1) / 2}" y="${HEIGHT - 12}" text-anchor="middle">${esc(spec.xLabel)}</text>`,
  )
  out.push(
    `<text x="16" y="${(yTop + yBottom) / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 16 ${(yTop + yBottom) / 2})">${esc(spec.yLabel)}</text>`,
  )

  // curves
  out.push('<g class="curves" fill="none" stroke-width="1.6">')
  for (const curve of drawn) {
    const style = styles.get(curve.key)
    if (!style) continue
    const dash = style.dash ? ` stroke-dasharray="${style.dash}"` : ''
    out.push(
      `<polyline class="curve" data-curve="${esc(curve.key)}" data-route="${esc(curve.route)}" ` +
        `stroke="${style.color}"${dash} points="${polylinePoints(curve, spec, layout)}"/>`,
    )
  }
  out.push('</g>')

  // legend (top-right corner of the frame)
  const lx = x1 - 240
  let ly = yTop + 14
  out.push('<g class="legend">')
  for (const curve of drawn) {
    const style = styles.get(curve.key)
    if (!style) continue
    const dash = style.dash ? ` stroke-dasharray="${style.dash}"` : ''
    out.push(
      `<line x1="${lx}" y1="${ly - 4}" x2="${lx + 28}" y2="${ly - 4}" ` +
        `stroke="${style.color}" stroke-width="1.6"${dash}/>`,
    )
    out.push(`<text x="${lx + 34}" y="${ly}">${esc(curve.label)}</text>`)
    ly += 16
  }
  out.push('</g>')
  out.push('</svg>')
  return out.join('\n') + '\n'
}
