/**
 * Orchestration: CSV bytes + figure id -> SVG text or PNG bytes.
 * Pure apart from the file IO helpers at the bottom.
 */

import { readFileSync, writeFileSync } from 'node:fs'

import { parsePotentialCsv, PotentialCsv, SchemaError } from './csv'
import { assignStyles, figureSpec, FigureSpec } from './figures'
import { renderPng } from './png'
import { renderSvg } from './svg'

export type ImageFormat = 'svg' | 'png'

export interface RenderResult {
  bytes: Buffer
  format: ImageFormat
  curveCount: number
}

export function renderFigure(csvText: string, figureId: number, format: ImageFormat): RenderResult {
  const spec: FigureSpec = figureSpec(figureId)
  const csv: PotentialCsv = parsePotentialCsv(csvText)
  if (spec.xScale === 'linear' && !csv.timeSeries) {
    throw new SchemaError(`figure ${figureId} expects a time series (t_s column with values)`)
  }
  if (spec.xScale === 'log' && csv.timeSeries) {
    throw new SchemaError(`figure ${figureId} expects distance curves, got a time series`)
  }
  const styles = assignStyles(spec, csv.curves)
  const curveCount = styles.size
  const bytes =
    format === 'svg'
      ? Buffer.from(renderSvg(spec, csv.curves, styles), 'utf-8')
      : renderPng(spec, csv.curves, styles)
  return { bytes, format, curveCount }
}

export function formatFromPath(path: string): ImageFormat {
  if (path.endsWith('.svg')) return 'svg'
  if (path.endsWith('.png')) return 'png'
  throw new Error(`output path must end in .svg or .png, got '${path}'`)
}

export function renderFile(csvPath: string, figureId: number, outPath: string): RenderResult {
  const format = formatFromPath(outPath) // usage errors before any IO
  const text = readFileSync(csvPath, 'utf-8')
  const result = renderFigure(text, figureId, format)
  writeFileSync(outPath, result.bytes)
  return result
}
