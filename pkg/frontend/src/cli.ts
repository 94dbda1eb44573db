#!/usr/bin/env node
/** CSV-in / SVG-out figure renderer for the simulator's output files. */
import * as fs from "node:fs";
import { parseArgs } from "node:util";

import { MissingInputError } from "./csv.js";
import { DEFAULT_BASELINE, FIGURE_IDS, renderFigure } from "./figures.js";

export function main(argv: string[]): number {
  let values;
  try {
    ({ values } = parseArgs({
      args: argv,
      options: {
        figure: { type: "string" },
        "csv-dir": { type: "string" },
        out: { type: "string" },
        baseline: { type: "string", default: String(DEFAULT_BASELINE) },
      },
    }));
  } catch (e) {
    console.error(`error: ${(e as Error).message}`);
    return 2;
  }
  const { figure, out } = values;
  const csvDir = values["csv-dir"];
  if (!figure || !csvDir || !out) {
    console.error("usage: render --figure N --csv-dir DIR --out FILE.svg [--baseline X]");
    console.error(`figures: ${FIGURE_IDS.join(", ")}`);
    return 2;
  }
  const baseline = Number(values.baseline);
  if (!Number.isFinite(baseline)) {
    console.error(`error: --baseline must be a number, got ${values.baseline}`);
    return 2;
  }
  try {
    const svg = renderFigure(figure, csvDir, baseline);
    fs.writeFileSync(out, svg);
    console.log(`wrote ${out}`);
    return 0;
  } catch (e) {
    console.error(`error: ${(e as Error).message}`);
    return e instanceof MissingInputError ? 4 : 2;
  }
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
