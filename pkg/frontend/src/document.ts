// Puzzle document loading and validation.
//
// The player consumes the JSON documents produced by the generator's
// export step (format_version 1). Everything is validated up front so the
// rest of the player can assume a well-formed puzzle.

export type GridKind = "square" | "triangle";
export type PatternKind = "chess" | "top-row" | "explicit";

export interface GeometryJson {
  kind: GridKind;
  rows: number;
  cols: number;
}

export interface PatternJson {
  kind: PatternKind;
  cells?: [number, number][];
}

/** A cell is addressed 1-based as [row, column]. */
export type Cell = readonly [number, number];

export interface Puzzle {
  geometry: GeometryJson;
  pattern: PatternJson;
  /** Open cells in row-major order. */
  openCells: Cell[];
  /** Clue value per open cell, keyed by cellKey(). */
  clues: Map<string, number>;
  /** Closed cells in row-major order. */
  closedCells: Cell[];
  /** Optional solution: 1 = mine, 0 = empty, keyed by cellKey(). */
  solution: Map<string, number> | null;
}

export function cellKey(cell: Cell): string {
  return `${cell[0]},${cell[1]}`;
}

const MOORE: ReadonlyArray<readonly [number, number]> = [
  [-1, -1], [-1, 0], [-1, 1],
  [0, -1], [0, 1],
  [1, -1], [1, 0], [1, 1],
];

/**
 * Neighborhood rule. Square cells see the 8 surrounding cells; triangle
 * cells see up to 12: the 8 Moore offsets, the two horizontal jumps
 * (0, +-2), and two parity-dependent offsets ((s, -2) and (s, 2) where s
 * is +1 for even i+j, -1 for odd).
 */
export function neighbors(geometry: GeometryJson, cell: Cell): Cell[] {
  const [i, j] = cell;
  const offsets: Array<readonly [number, number]> = [...MOORE];
  if (geometry.kind === "triangle") {
    offsets.push([0, -2], [0, 2]);
    const s = (i + j) % 2 === 0 ? 1 : -1;
    offsets.push([s, -2], [s, 2]);
  }
  const out: Cell[] = [];
  for (const [di, dj] of offsets) {
    const ni = i + di;
    const nj = j + dj;
    if (ni >= 1 && ni <= geometry.rows && nj >= 1 && nj <= geometry.cols) {
      out.push([ni, nj]);
    }
  }
  return out;
}

function expandPattern(geometry: GeometryJson, pattern: PatternJson): Cell[] {
  const open: Cell[] = [];
  if (pattern.kind === "explicit") {
    const set = new Set((pattern.cells ?? []).map((c) => cellKey(c)));
    for (let i = 1; i <= geometry.rows; i++) {
      for (let j = 1; j <= geometry.cols; j++) {
        if (set.has(cellKey([i, j]))) {
          open.push([i, j]);
        }
      }
    }
    return open;
  }
  for (let i = 1; i <= geometry.rows; i++) {
    for (let j = 1; j <= geometry.cols; j++) {
      const isOpen =
        pattern.kind === "chess" ? (i + j) % 2 === 0 : i === 1;
      if (isOpen) {
        open.push([i, j]);
      }
    }
  }
  return open;
}

export class DocumentError extends Error {}

function fail(message: string): never {
  throw new DocumentError(message);
}

function asTriples(value: unknown, what: string): [number, number, number][] {
  if (!Array.isArray(value)) {
    fail(`${what} must be an array`);
  }
  return value.map((row) => {
    if (
      !Array.isArray(row) ||
      row.length !== 3 ||
      !row.every((x) => Number.isInteger(x))
    ) {
      fail(`${what} entries must be [row, col, value] integer triples`);
    }
    return row as [number, number, number];
  });
}

/** Parse and validate a raw JSON document into a playable Puzzle. */
export function loadDocument(raw: unknown): Puzzle {
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    fail("document must be a JSON object");
  }
  const doc = raw as Record<string, unknown>;
  if (doc.format_version !== 1) {
    fail(`unsupported format_version ${String(doc.format_version)}`);
  }
  const g = doc.geometry as Record<string, unknown> | undefined;
  if (
    !g ||
    (g.kind !== "square" && g.kind !== "triangle") ||
    !Number.isInteger(g.rows) ||
    !Number.isInteger(g.cols) ||
    (g.rows as number) < 1 ||
    (g.cols as number) < 1
  ) {
    fail("bad geometry");
  }
  const geometry: GeometryJson = {
    kind: g.kind as GridKind,
    rows: g.rows as number,
    cols: g.cols as number,
  };
  const p = doc.pattern as Record<string, unknown> | undefined;
  if (!p || (p.kind !== "chess" && p.kind !== "top-row" && p.kind !== "explicit")) {
    fail("bad pattern");
  }
  const pattern: PatternJson = { kind: p.kind as PatternKind };
  if (pattern.kind === "explicit") {
    if (!Array.isArray(p.cells)) {
      fail("explicit pattern requires a cell list");
    }
    pattern.cells = (p.cells as unknown[]).map((c) => {
      if (!Array.isArray(c) || c.length !== 2 || !c.every(Number.isInteger)) {
        fail("explicit pattern cells must be [row, col] pairs");
      }
      return c as [number, number];
    });
  }

  const openCells = expandPattern(geometry, pattern);
  const openSet = new Set(openCells.map(cellKey));
  const clues = new Map<string, number>();
  for (const [i, j, v] of asTriples(doc.clues, "clues")) {
    const key = cellKey([i, j]);
    if (!openSet.has(key) || clues.has(key) || v < 0) {
      fail(`bad clue at (${i}, ${j})`);
    }
    clues.set(key, v);
  }
  if (clues.size !== openCells.length) {
    fail("clue cells must coincide exactly with the open pattern");
  }

  const closedCells: Cell[] = [];
  for (let i = 1; i <= geometry.rows; i++) {
    for (let j = 1; j <= geometry.cols; j++) {
      if (!openSet.has(cellKey([i, j]))) {
        closedCells.push([i, j]);
      }
    }
  }

  let solution: Map<string, number> | null = null;
  if (doc.solution !== undefined && doc.solution !== null) {
    solution = new Map();
    for (const [i, j, v] of asTriples(doc.solution, "solution")) {
      if (v !== 0 && v !== 1) {
        fail(`solution value at (${i}, ${j}) must be 0 or 1`);
      }
      solution.set(cellKey([i, j]), v);
    }
    if (
      solution.size !== closedCells.length ||
      !closedCells.every((c) => solution!.has(cellKey(c)))
    ) {
      fail("solution must cover exactly the closed cells");
    }
    // The solution must reproduce every clue.
    for (const cell of openCells) {
      let count = 0;
      for (const nb of neighbors(geometry, cell)) {
        count += solution.get(cellKey(nb)) ?? 0;
      }
      if (count !== clues.get(cellKey(cell))) {
        fail(`solution does not satisfy the clue at (${cell[0]}, ${cell[1]})`);
      }
    }
  }

  return { geometry, pattern, openCells, clues, closedCells, solution };
}
