import { readFileSync } from 'node:fs'
import { join } from 'node:path'

import { describe, expect, it } from 'vitest'

import { DataError, parsePotentialCsv, SchemaError } from '../src/csv'

const FIXTURES = join(__dirname, 'fixtures')

function fixture(name: string): string {
  return readFileSync(join(FIXTURES, name), 'utf-8')
}

describe('parsePotentialCsv', () => {
  it('parses a figure preset file into labelled curve groups', () => {
    const csv = parsePotentialCsv(fixture('fig5.csv'))
    expect(csv.timeSeries).toBe(false)
    expect(csv.curves.map((c) => c.key)).toEqual(['pert', 'bloch', 'undriven'])
    expect(csv.meta.get('schema')).toBe('drivencp.potential.v1')
    expect(csv.meta.has('config_hash')).toBe(true)
    const bloch = csv.curves.find((c) => c.key === 'bloch')
    expect(bloch?.label).toBe('driven, Bloch route (averaged)')
    expect(bloch?.x.length).toBe(40)
    expect(bloch?.y.every((v) => Number.isFinite(v))).toBe(true)
  })

  it('parses the time-series preset with t_s as the running coordinate', () => {
    const csv = parsePotentialCsv(fixture('fig4.csv'))
    expect(csv.timeSeries).toBe(true)
    expect(csv.curves).toHaveLength(2)
    expect(csv.curves[0]?.x[0]).toBe(0)
    // monotone time within one curve
    const t = csv.curves[0]?.x ?? []
    for (let i = 1; i < t.length; i++) expect(t[i]!).toBeGreaterThan(t[i - 1]!)
  })

  it('raises a schema error naming a missing required column', () => {
    const corrupted = fixture('fig5.csv').replace('value_J', 'value')
    expect(() => parsePotentialCsv(corrupted)).toThrowError(SchemaError)
    expect(() => parsePotentialCsv(corrupted)).toThrowError(/value_J/)
  })

  it('raises a schema error on an unknown column', () => {
    const corrupted = fixture('fig5.csv').replace('convention,curve', 'convention,curve,mystery')
    expect(() => parsePotentialCsv(corrupted)).toThrowError(/mystery/)
  })

  it('raises a schema error on a malformed number cell', () => {
    const lines = fixture('fig5.csv').split('\n')
    const firstData = lines.findIndex((l) => !l.startsWith('#') && l.includes('e')) + 1
    lines[firstData] = (lines[firstData] ?? '').replace(/^[^,]+/, 'not-a-number')
    expect(() => parsePotentialCsv(lines.join('\n'))).toThrowError(/z_m/)
  })

  it('raises a schema error on a row with the wrong cell count', () => {
    const text = fixture('fig5.csv') + 'too,few\n'
    expect(() => parsePotentialCsv(text)).toThrowError(/cells/)
  })

  it('raises a data error on a header-only file', () => {
    const headerOnly = 'z_m,route,value_J,convention,curve\n'
    expect(() => parsePotentialCsv(headerOnly)).toThrowError(DataError)
  })

  it('raises a schema error when the header row is absent', () => {
    expect(() => parsePotentialCsv('# schema=drivencp.potential.v1\n')).toThrowError(/header/)
  })

  it('falls back to the curve key when no label metadata exists', () => {
    const text = [
      'z_m,route,value_J,convention,curve',
      '1.0e-07,pert,-1.0e-28,conv,solo',
    ].join('\n')
    const csv = parsePotentialCsv(text)
    expect(csv.curves[0]?.label).toBe('solo')
  })
})
