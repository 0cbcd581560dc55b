/**
 * Minimal deterministic PNG backend: rasterizes the curve polylines and the
 * plot frame into an RGB buffer (no text; the SVG backend carries the legend)
 * and encodes it with node's zlib.  One distinct stroke color per curve, so a
 * decoded image reveals exactly how many curves were drawn.
 */

import { deflateSync } from 'node:zlib'

import { CurveSeries } from './csv'
import { CurveStyle, FigureSpec } from './figures'
import { layoutFor, HEIGHT, WIDTH } from './svg'

export class Raster {
  readonly width: number
  readonly height: number
  readonly data: Buffer // RGB, 3 bytes per pixel

  constructor(width: number, height: number) {
    this.width = width
    this.height = height
    this.data = Buffer.alloc(width * height * 3, 0xff)
  }

  set(x: number, y: number, rgb: [number, number, number]): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return
    const i = (y * this.width + x) * 3
    this.data[i] = rgb[0]
    this.data[i + 1] = rgb[1]
    this.data[i + 2] = rgb[2]
  }

  /** Bresenham line, 2 px wide for visibility at figure scale. */
  line(x0: number, y0: number, x1: number, y1: number, rgb: [number, number, number]): void {
    let ax = Math.round(x0)
    let ay = Math.round(y0)
    const bx = Math.round(x1)
    const by = Math.round(y1)
    const dx = Math.abs(bx - ax)
    const dy = -Math.abs(by - ay)
    const sx = ax < bx ? 1 : -1
    const sy = ay < by ? 1 : -1
    let err = dx + dy
    for (;;) {
      this.set(ax, ay, rgb)
      this.set(ax + 1, ay, rgb)
      this.set(ax, ay + 1, rgb)
      if (ax === bx && ay === by) break
      const e2 = 2 * err
      if (e2 >= dy) {
        err += dy
        ax += sx
      }
      if (e2 <= dx) {
        err += dx
        ay += sy
      }
    }
  }

  frame(x0: number, y0: number, x1: number, y1: number, rgb: [number, number, number]): void {
    this.line(x0, y0, x1, y0, rgb)
    this.line(x1, y0, x1, y1, rgb)
    this.line(x1, y1, x0, y1, rgb)
    this.line(x0, y1, x0, y0, rgb)
  }
}

export function hexToRgb(hex: string): [number, number, number] {
  const n = parseInt(hex.slice(1), 16)
  return [(n >> 16) & 0xff, (n >> 8) & 0xff, n & 0xff]
}

const CRC_TABLE = (() => {
  const table = new Uint32Array(256)
  for (let n = 0; n < 256; n++) {
    let c = n
    for (let k = 0; k < 8; k++) c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1
    table[n] = c >>> 0
  }
  return table
})()

function crc32(buf: Buffer): number {
  let crc = 0xffffffff
  for (const byte of buf) crc = (CRC_TABLE[(crc ^ byte) & 0xff] ?? 0) ^ (crc >>> 8)
  return (crc ^ 0xffffffff) >>> 0
}

function chunk(type: string, payload: Buffer): Buffer {
  const head = Buffer.alloc(4)
  head.writeUInt32BE(payload.length)
  const body = Buffer.concat([Buffer.from(type, 'latin1'), payload])
  const crc = Buffer.alloc(4)
  crc.writeUInt32BE(crc32(body))
  return Buffer.concat([head, body, crc])
}

export function encodePng(raster: Raster): Buffer {
  const { width, height, data } = raster
  const ihdr = Buffer.alloc(13)
  ihdr.writeUInt32BE(width, 0)
  ihdr.writeUInt32BE(height, 4)
  ihdr[8] = 8 // bit depth
  ihdr[9] = 2 // color type: truecolor RGB
  // compression / filter / interlace stay 0
  const stride = width * 3
  const filtered = Buffer.alloc((stride + 1) * height)
  for (let y = 0; y < height; y++) {
    filtered[y * (stride + 1)] = 0 // filter type none
    data.copy(filtered, y * (stride + 1) + 1, y * stride, (y + 1) * stride)
  }
  return Buffer.concat([
    Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]),
    chunk('IHDR', ihdr),
    chunk('IDAT', deflateSync(filtered, { level: 9 })),
    chunk('IEND', Buffer.alloc(0)),
  ])
}

export function renderPng(
  spec: FigureSpec,
  curves: CurveSeries[],
  styles: Map<string, CurveStyle>,
): Buffer {
  const drawn = curves.filter((c) => styles.has(c.key))
  if (drawn.length === 0) throw new Error('nothing to draw: every curve was skipped')
  const layout = layoutFor(spec, drawn)
  const raster = new Raster(WIDTH, HEIGHT)
  raster.frame(layout.x.range[0], layout.y.range[1], layout.x.range[1], layout.y.range[0], [68, 68, 68])
  for (const curve of drawn) {
    const style = styles.get(curve.key)
    if (!style) continue
    const rgb = hexToRgb(style.color)
    for (let i = 1; i < curve.x.length; i++) {
      raster.line(
        layout.x.map(curve.x[i - 1] ?? 0),
        layout.y.map((curve.y[i - 1] ?? 0) / spec.yUnit),
        layout.x.map(curve.x[i] ?? 0),
        layout.y.map((curve.y[i] ?? 0) / spec.yUnit),
        rgb,
      )
    }
  }
  return encodePng(raster)
}
