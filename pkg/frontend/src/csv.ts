/**
 * Parser for the drivencp potential CSV contract:
 *
 *   # key=value               comment/metadata block (labels, config hash, constants)
 *   z_m,route,value_J,convention,curve[,t_s]
 *   <data rows, 12-significant-digit scientific floats>
 *
 * Schema problems (missing/unknown required columns, malformed rows) raise
 * SchemaError naming the offender; structurally valid files without data
 * rows raise DataError.
 */

export class SchemaError extends Error {
  constructor(message: string) {
    super(message)
    this.name = 'SchemaError'
  }
}

export class DataError extends Error {
  constructor(message: string) {
    super(message)
    this.name = 'DataError'
  }
}

export interface CsvRow {
  z_m: number
  route: string
  value_J: number
  convention: string
  curve: string
  t_s: number | null
}

export interface CurveSeries {
  key: string
  route: string
  convention: string
  label: string
  x: number[] // z_m, or t_s when the file carries a time series
  y: number[] // value_J
}

export interface PotentialCsv {
  meta: Map<string, string>
  columns: string[]
  rows: CsvRow[]
  curves: CurveSeries[]
  timeSeries: boolean
}

const REQUIRED = ['z_m', 'route', 'value_J', 'convention', 'curve'] as const
const OPTIONAL = ['t_s'] as const

function parseFloatStrict(raw: string, column: string, line: number): number {
  const value = Number(raw)
  if (raw.trim() === '' || !Number.isFinite(value)) {
    throw new SchemaError(`line ${line}: column '${column}': not a finite number: '${raw}'`)
  }
  return value
}

export function parsePotentialCsv(text: string): PotentialCsv {
  const meta = new Map<string, string>()
  let columns: string[] | null = null
  const rows: CsvRow[] = []

  const lines = text.split(/\r?\n/)
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i] ?? ''
    if (line.trim() === '') continue
    if (line.startsWith('#')) {
      const body = line.slice(1).trim()
      const eq = body.indexOf('=')
      if (eq > 0) meta.set(body.slice(0, eq).trim(), body.slice(eq + 1))
      continue
    }
    if (columns === null) {
      columns = line.split(',').map((c) => c.trim())
      for (const required of REQUIRED) {
        if (!columns.includes(required)) {
          throw new SchemaError(`header is missing required column '${required}' (got: ${columns.join(', ')})`)
        }
      }
      for (const col of columns) {
        if (!REQUIRED.includes(col as never) && !OPTIONAL.includes(col as never)) {
          throw new SchemaError(`header carries unknown column '${col}'`)
        }
      }
      continue
    }
    const cells = line.split(',')
    if (cells.length !== columns.length) {
      throw new SchemaError(`line ${i + 1}: expected ${columns.length} cells, got ${cells.length}`)
    }
    const record: Record<string, string> = {}
    columns.forEach((col, j) => (record[col] = cells[j] ?? ''))
    rows.push({
      z_m: parseFloatStrict(record['z_m'] ?? '', 'z_m', i + 1),
      route: record['route'] ?? '',
      value_J: parseFloatStrict(record['value_J'] ?? '', 'value_J', i + 1),
      convention: record['convention'] ?? '',
      curve: record['curve'] ?? '',
      t_s: record['t_s'] ? parseFloatStrict(record['t_s'], 't_s', i + 1) : null,
    })
  }

  if (columns === null) throw new SchemaError('no header row found')
  if (rows.length === 0) throw new DataError('no data rows')

  const timeSeries = rows.some((r) => r.t_s !== null)
  const curves: CurveSeries[] = []
  const byKey = new Map<string, CurveSeries>()
  for (const row of rows) {
    let series = byKey.get(row.curve)
    if (!series) {
      series = {
        key: row.curve,
        route: row.route,
        convention: row.convention,
        label: meta.get(`label.${row.curve}`) ?? row.curve,
        x: [],
        y: [],
      }
      byKey.set(row.curve, series)
      curves.push(series)
    }
    series.x.push(timeSeries ? (row.t_s ?? 0) : row.z_m)
    series.y.push(row.value_J)
  }
  return { meta, columns, rows, curves, timeSeries }
}
