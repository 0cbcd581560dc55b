/**
 * render --figure N --csv PATH --out PATH.(svg|png)
 *
 * Exit codes: 0 success, 1 schema/data error in the input CSV,
 * 2 usage error (bad flags, unknown figure, bad output extension).
 */

import { DataError, SchemaError } from './csv'
import { FIGURE_IDS } from './figures'
import { renderFile } from './render'

interface Args {
  figure: number
  csv: string
  out: string
}

function usage(): string {
  return 'usage: render --figure {1..5} --csv PATH --out PATH.(svg|png)'
}

export function parseArgs(argv: string[]): Args {
  const args = [...argv]
  if (args[0] === 'render') args.shift() // tolerate the subcommand-style spelling
  let figure: number | null = null
  let csv: string | null = null
  let out: string | null = null
  for (let i = 0; i < args.length; i += 2) {
    const flag = args[i]
    const value = args[i + 1]
    if (value === undefined) throw new Error(`missing value for ${flag}\n${usage()}`)
    switch (flag) {
      case '--figure':
        figure = Number(value)
        break
      case '--csv':
        csv = value
        break
      case '--out':
        out = value
        break
      default:
        throw new Error(`unknown flag '${flag}'\n${usage()}`)
    }
  }
  if (figure === null || csv === null || out === null) {
    throw new Error(`--figure, --csv and --out are all required\n${usage()}`)
  }
  if (!FIGURE_IDS.includes(figure)) {
    throw new Error(`--figure must be one of ${FIGURE_IDS.join(', ')}, got '${figure}'`)
  }
  return { figure, csv, out }
}

export function main(argv: string[]): number {
  let args: Args
  try {
    args = parseArgs(argv)
  } catch (err) {
    console.error(`error: ${(err as Error).message}`)
    return 2
  }
  try {
    const result = renderFile(args.csv, args.figure, args.out)
    console.log(`wrote ${args.out} (${result.format}, ${result.curveCount} curves)`)
    return 0
  } catch (err) {
    if (err instanceof SchemaError || err instanceof DataError) {
      console.error(`${(err as Error).name}: ${(err as Error).message}`)
      return 1
    }
    console.error(`error: ${(err as Error).message}`)
    return 2
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)))
}
