// Play state: the player's marks and the live clue feedback.
//
// All transitions are pure; cycling a mark is the only mutation and undo
// is just cycling onward.

import { Cell, Puzzle, cellKey, neighbors } from "./document.js";

export type Mark = "unknown" | "mine" | "empty";
export type ClueStatus = "satisfied" | "violated" | "open";
export type Completion = "complete" | "incomplete";

export interface PlayState {
  puzzle: Puzzle;
  /** Mark per closed cell, keyed by cellKey(). */
  marks: Map<string, Mark>;
}

export function newPlayState(puzzle: Puzzle): PlayState {
  const marks = new Map<string, Mark>();
  for (const cell of puzzle.closedCells) {
    marks.set(cellKey(cell), "unknown");
  }
  return { puzzle, marks };
}

const CYCLE: Record<Mark, Mark> = {
  unknown: "mine",
  mine: "empty",
  empty: "unknown",
};

/** Unknown -> Mine -> Empty -> Unknown. Open cells are not markable. */
export function cycleMark(state: PlayState, cell: Cell): PlayState {
  const key = cellKey(cell);
  const current = state.marks.get(key);
  if (current === undefined) {
    return state;
  }
  const marks = new Map(state.marks);
  marks.set(key, CYCLE[current]);
  return { puzzle: state.puzzle, marks };
}

export function setMark(state: PlayState, cell: Cell, mark: Mark): PlayState {
  const key = cellKey(cell);
  if (!state.marks.has(key)) {
    return state;
  }
  const marks = new Map(state.marks);
  marks.set(key, mark);
  return { puzzle: state.puzzle, marks };
}

/**
 * Live status of one clue. Violated when the marked mines already exceed
 * the clue, or the remaining unknown neighbors can no longer reach it;
 * satisfied when every neighbor is marked and the count is exact; open
 * otherwise.
 */
export function clueStatus(state: PlayState, cell: Cell): ClueStatus {
  const clue = state.puzzle.clues.get(cellKey(cell));
  if (clue === undefined) {
    throw new Error(`no clue at (${cell[0]}, ${cell[1]})`);
  }
  let mines = 0;
  let unknown = 0;
  for (const nb of neighbors(state.puzzle.geometry, cell)) {
    const mark = state.marks.get(cellKey(nb));
    if (mark === "mine") {
      mines += 1;
    } else if (mark === "unknown") {
      unknown += 1;
    }
    // Open neighbors and cells marked empty contribute nothing.
  }
  if (mines > clue || mines + unknown < clue) {
    return "violated";
  }
  if (unknown === 0) {
    return "satisfied";
  }
  return "open";
}

export function allStatuses(state: PlayState): Map<string, ClueStatus> {
  const out = new Map<string, ClueStatus>();
  for (const cell of state.puzzle.openCells) {
    out.set(cellKey(cell), clueStatus(state, cell));
  }
  return out;
}

/**
 * Complete when every closed cell is marked and every clue is satisfied.
 * Pure local validation; the solution field is never consulted.
 */
export function checkCompletion(state: PlayState): Completion {
  for (const mark of state.marks.values()) {
    if (mark === "unknown") {
      return "incomplete";
    }
  }
  for (const cell of state.puzzle.openCells) {
    if (clueStatus(state, cell) !== "satisfied") {
      return "incomplete";
    }
  }
  return "complete";
}
