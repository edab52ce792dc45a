/** DOM wiring: SVG board, new-game form, hint button, replay slider. */

import { ApiClient } from "./api.js";
import {
  nearestChord,
  renderModel,
  vertexPositions,
  type ChordView,
} from "./board.js";
import { GameController } from "./controller.js";
import type { Bias, Pair, PlayerName } from "./types.js";

const SIZE = 560;
const CENTER = SIZE / 2;
const RADIUS = SIZE / 2 - 40;
const CLICK_TOLERANCE = 12;
const SVG_NS = "http://www.w3.org/2000/svg";

const api = new ApiClient("");
const controller = new GameController(api);

const svg = document.getElementById("board") as unknown as SVGSVGElement;
const banner = document.getElementById("banner")!;
const noticesBox = document.getElementById("notices")!;
const historyBox = document.getElementById("history")!;
const slider = document.getElementById("replay") as HTMLInputElement;
const hintButton = document.getElementById("hint") as HTMLButtonElement;
const form = document.getElementById("new-game") as HTMLFormElement;

let replayIndex: number | null = null; // null = live view

function chordClass(view: ChordView): string {
  const classes = ["chord", view.owner];
  if (view.lastMove) classes.push("last-move");
  if (view.hint) classes.push("hint");
  if (view.staged) classes.push("staged");
  if (view.witness) classes.push("witness");
  if (view.net) classes.push("net");
  if (view.beam) classes.push("beam");
  return classes.join(" ");
}

function draw(): void {
  const state = controller.state;
  svg.replaceChildren();
  if (!state) {
    banner.textContent = "start a game";
    return;
  }
  const positions = vertexPositions(state.n, CENTER, CENTER, RADIUS);

  const frame = replayIndex === null ? null : controller.frameAt(replayIndex);
  const shown = frame
    ? { ...state, maker: frame.maker, breaker: frame.breaker, turn: frame.turn,
        history: state.history.slice(0, replayIndex ?? 0), witness: null,
        breaker_structure: null }
    : state;
  const model = renderModel(shown, controller.hints, controller.staged);

  // polygon outline
  const outline = document.createElementNS(SVG_NS, "polygon");
  outline.setAttribute(
    "points",
    positions.map((p) => `${p.x},${p.y}`).join(" "),
  );
  outline.setAttribute("class", "outline");
  svg.appendChild(outline);

  for (const view of model.chords) {
    const [i, j] = view.pair;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(positions[i].x));
    line.setAttribute("y1", String(positions[i].y));
    line.setAttribute("x2", String(positions[j].x));
    line.setAttribute("y2", String(positions[j].y));
    line.setAttribute("class", chordClass(view));
    svg.appendChild(line);
  }

  positions.forEach((p, k) => {
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("cx", String(p.x));
    dot.setAttribute("cy", String(p.y));
    dot.setAttribute("r", "5");
    dot.setAttribute("class", "vertex");
    svg.appendChild(dot);
    const label = document.createElementNS(SVG_NS, "text");
    const lx = CENTER + (RADIUS + 18) * ((p.x - CENTER) / RADIUS);
    const ly = CENTER + (RADIUS + 18) * ((p.y - CENTER) / RADIUS);
    label.setAttribute("x", String(lx));
    label.setAttribute("y", String(ly));
    label.setAttribute("class", "vertex-label");
    label.textContent = String(k);
    svg.appendChild(label);
  });

  banner.textContent =
    replayIndex === null
      ? model.banner +
        (controller.staged.length
          ? ` (staged ${controller.staged.length}/${controller.turnQuota()})`
          : "")
      : `replay: after move ${replayIndex}`;

  noticesBox.replaceChildren();
  controller.notices.forEach((notice, index) => {
    const div = document.createElement("div");
    div.className = `notice ${notice.kind}`;
    div.textContent = notice.text;
    const close = document.createElement("button");
    close.textContent = "x";
    close.addEventListener("click", () => {
      controller.dismissNotice(index);
      draw();
    });
    div.appendChild(close);
    noticesBox.appendChild(div);
  });

  historyBox.replaceChildren();
  state.history.forEach((move, index) => {
    const row = document.createElement("div");
    row.className = `move ${move.player}`;
    row.textContent = `${index + 1}. ${move.player} ${move.diagonals
      .map((d) => `${d[0]}-${d[1]}`)
      .join(",")}`;
    historyBox.appendChild(row);
  });

  slider.max = String(controller.replaySteps());
  if (replayIndex === null) slider.value = slider.max;
}

svg.addEventListener("click", async (event) => {
  const state = controller.state;
  if (!state || replayIndex !== null) return;
  const rect = svg.getBoundingClientRect();
  const x = ((event.clientX - rect.left) / rect.width) * SIZE;
  const y = ((event.clientY - rect.top) / rect.height) * SIZE;
  const pair = nearestChord(state.n, vertexPositions(state.n, CENTER, CENTER, RADIUS), x, y, CLICK_TOLERANCE);
  if (!pair) return;
  await controller.click(pair);
  draw();
});

hintButton.addEventListener("click", async () => {
  await controller.requestHint();
  draw();
});

slider.addEventListener("input", () => {
  const value = Number(slider.value);
  replayIndex = value >= controller.replaySteps() ? null : value;
  draw();
});

form.addEventListener("submit", async (event) => {
  event.preventDefault();
  const data = new FormData(form);
  const n = Number(data.get("n"));
  const human = String(data.get("human")) as PlayerName;
  const bias = String(data.get("bias")) as Bias;
  replayIndex = null;
  await controller.newGame({ n, human, bias, first: "maker" });
  draw();
});

draw();
