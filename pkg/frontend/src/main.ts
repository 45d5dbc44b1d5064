// Browser entry point: fetches the fixture bundle, lets the player pick a
// puzzle, and wires clicks to mark cycling. All game logic lives in the
// pure modules; this file only touches the DOM.

import { loadDocument } from "./document.js";
import { renderBoard } from "./render.js";
import {
  PlayState,
  checkCompletion,
  cycleMark,
  newPlayState,
  setMark,
} from "./state.js";

interface IndexEntry {
  file: string;
  kind: string;
  rows: number;
  cols: number;
  has_solution: boolean;
}

let state: PlayState | null = null;
let revealed = false;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node as T;
}

function redraw(): void {
  if (!state) {
    return;
  }
  const board = el<HTMLDivElement>("board");
  board.innerHTML = renderBoard(state);
  const status = el<HTMLDivElement>("status");
  status.textContent =
    checkCompletion(state) === "complete"
      ? "Complete: every clue is satisfied."
      : "In progress. Click closed cells to cycle: blank, mine, empty.";
  for (const node of board.querySelectorAll<SVGElement>(".closed")) {
    node.addEventListener("click", () => {
      const key = node.dataset.cell;
      if (!state || !key) {
        return;
      }
      const [i, j] = key.split(",").map(Number);
      state = cycleMark(state, [i as number, j as number]);
      redraw();
    });
  }
}

function reveal(): void {
  if (!state || !state.puzzle.solution) {
    return;
  }
  const solution = state.puzzle.solution;
  revealed = !revealed;
  if (revealed) {
    for (const cell of state.puzzle.closedCells) {
      const v = solution.get(`${cell[0]},${cell[1]}`);
      state = setMark(state, cell, v === 1 ? "mine" : "empty");
    }
  } else {
    state = newPlayState(state.puzzle);
  }
  redraw();
}

async function pick(file: string): Promise<void> {
  const response = await fetch(`fixtures/${file}`);
  const puzzle = loadDocument(await response.json());
  state = newPlayState(puzzle);
  revealed = false;
  el<HTMLButtonElement>("reveal").disabled = puzzle.solution === null;
  redraw();
}

async function init(): Promise<void> {
  const response = await fetch("fixtures/index.json");
  const index = (await response.json()) as { puzzles: IndexEntry[] };
  const list = el<HTMLSelectElement>("picker");
  for (const entry of index.puzzles) {
    const option = document.createElement("option");
    option.value = entry.file;
    option.textContent = `${entry.file} (${entry.kind} ${entry.rows}x${entry.cols})`;
    list.appendChild(option);
  }
  list.addEventListener("change", () => void pick(list.value));
  el<HTMLButtonElement>("reveal").addEventListener("click", reveal);
  if (index.puzzles.length > 0) {
    const first = index.puzzles[0];
    if (first) {
      await pick(first.file);
    }
  }
}

if (typeof document !== "undefined") {
  void init();
}
