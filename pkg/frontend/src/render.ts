// SVG board renderer, DOM-free: it builds markup strings so it can run
// and be tested outside a browser. Square cells are axis-aligned squares;
// triangle cells are triangles pointing up when i+j is even and down
// otherwise, packed so horizontally adjacent cells share an edge.

import { Cell, Puzzle, cellKey } from "./document.js";
import { ClueStatus, Mark, PlayState, allStatuses } from "./state.js";

const CELL = 48;
const TRI_H = 42;

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function markGlyph(mark: Mark): string {
  if (mark === "mine") {
    return "✕"; // cross
  }
  if (mark === "empty") {
    return "–"; // dash
  }
  return "";
}

interface Shape {
  body: string;
  cx: number;
  cy: number;
}

function squareShape(cell: Cell, attrs: string): Shape {
  const [i, j] = cell;
  const x = (j - 1) * CELL;
  const y = (i - 1) * CELL;
  return {
    body: `<rect x="${x}" y="${y}" width="${CELL}" height="${CELL}"${attrs}/>`,
    cx: x + CELL / 2,
    cy: y + CELL / 2,
  };
}

function triangleShape(cell: Cell, attrs: string): Shape {
  const [i, j] = cell;
  const up = (i + j) % 2 === 0;
  const x = ((j - 1) * CELL) / 2;
  const y = (i - 1) * TRI_H;
  const points = up
    ? `${x},${y + TRI_H} ${x + CELL},${y + TRI_H} ${x + CELL / 2},${y}`
    : `${x},${y} ${x + CELL},${y} ${x + CELL / 2},${y + TRI_H}`;
  return {
    body: `<polygon points="${points}"${attrs}/>`,
    cx: x + CELL / 2,
    // Pull the label toward the long edge so it sits inside the triangle.
    cy: up ? y + TRI_H * 0.68 : y + TRI_H * 0.32,
  };
}

function shapeFor(puzzle: Puzzle, cell: Cell, classes: string): Shape {
  const attrs = ` class="${classes}" data-cell="${cellKey(cell)}"`;
  return puzzle.geometry.kind === "triangle"
    ? triangleShape(cell, attrs)
    : squareShape(cell, attrs);
}

function label(shape: Shape, text: string, cls: string): string {
  if (!text) {
    return "";
  }
  return (
    `<text x="${shape.cx}" y="${shape.cy}" class="${cls}" ` +
    `text-anchor="middle" dominant-baseline="central">${esc(text)}</text>`
  );
}

/** Render the whole board for the current play state as an SVG string. */
export function renderBoard(state: PlayState): string {
  const { puzzle } = state;
  const { rows, cols, kind } = puzzle.geometry;
  const width = kind === "triangle" ? ((cols + 1) * CELL) / 2 : cols * CELL;
  const height = kind === "triangle" ? rows * TRI_H : rows * CELL;
  const statuses = allStatuses(state);
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `width="${width}" height="${height}">`,
  ];
  for (const cell of puzzle.openCells) {
    const status = statuses.get(cellKey(cell)) as ClueStatus;
    const shape = shapeFor(puzzle, cell, `cell open ${status}`);
    parts.push(shape.body);
    parts.push(label(shape, String(puzzle.clues.get(cellKey(cell))), "clue"));
  }
  for (const cell of puzzle.closedCells) {
    const mark = state.marks.get(cellKey(cell)) as Mark;
    const shape = shapeFor(puzzle, cell, `cell closed mark-${mark}`);
    parts.push(shape.body);
    parts.push(label(shape, markGlyph(mark), "mark"));
  }
  parts.push("</svg>");
  return parts.join("");
}
