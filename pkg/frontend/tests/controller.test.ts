import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { allDiagonals } from "../src/board.js";
import { GameController } from "../src/controller.js";
import type { Pair } from "../src/types.js";
import { FakeServer } from "./fake-server.js";

function mulberry32(seed: number) {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function setup() {
  const server = new FakeServer();
  const controller = new GameController(new ApiClient("", server.fetch));
  return { server, controller };
}

describe("turn gating", () => {
  it("blocks clicks when it is not the human's turn and sends nothing", async () => {
    const { server, controller } = setup();
    await controller.newGame({ n: 6, human: "maker", bias: "1:1", first: "maker" });
    await controller.click([0, 2]); // legal: our turn
    expect(controller.state!.maker).toEqual([[0, 2]]);
    // engine replied, back to us; simulate a stale-turn situation by
    // flipping the role so every click is out of turn
    controller.humanRole = "breaker";
    const outcome = await controller.click([0, 3]);
    expect(outcome).toBe("blocked_turn");
    expect(server.notYourTurn).toBe(0);
  });

  it("blocks occupied clicks locally without a request", async () => {
    const { server, controller } = setup();
    await controller.newGame({ n: 6, human: "maker", bias: "1:1", first: "maker" });
    await controller.click([0, 2]);
    const before = controller.state!.history.length;
    const outcome = await controller.click([0, 2]);
    expect(outcome).toBe("blocked_occupied");
    expect(server.occupied).toBe(0);
    expect(controller.state!.history.length).toBe(before);
    expect(controller.notices.some((n) => n.text.includes("occupied"))).toBe(true);
  });

  it("stages two clicks for the breaker's double opening", async () => {
    const { server, controller } = setup();
    await controller.newGame({ n: 6, human: "breaker", bias: "1:2", first: "maker" });
    expect(controller.state!.maker.length).toBe(1); // engine opened
    expect(controller.turnQuota()).toBe(2);
    const first = await controller.click([1, 3]);
    expect(first).toBe("staged");
    expect(controller.staged).toEqual([[1, 3]]);
    const second = await controller.click([2, 4]);
    expect(second).toBe("submitted");
    expect(controller.state!.breaker).toEqual([[1, 3], [2, 4]]);
    expect(controller.turnQuota()).toBe(1);
    expect(server.notYourTurn).toBe(0);
  });

  it("a second click on a staged chord unstages it", async () => {
    const { controller } = setup();
    await controller.newGame({ n: 6, human: "breaker", bias: "1:2", first: "maker" });
    await controller.click([1, 3]);
    const outcome = await controller.click([1, 3]);
    expect(outcome).toBe("staged");
    expect(controller.staged).toEqual([]);
  });

  it("blocks clicks on a finished game", async () => {
    const { controller } = setup();
    await controller.newGame({ n: 4, human: "maker", bias: "1:1", first: "maker" });
    await controller.click([0, 2]); // engine reply fills the 2-diagonal board
    expect(controller.state!.status).not.toBe("ongoing");
    const outcome = await controller.click([1, 3]);
    expect(outcome).toBe("blocked_finished");
  });
});

describe("random click storms", () => {
  it("1000 random sequences never reach the server out of turn", async () => {
    const { server, controller } = setup();
    const rand = mulberry32(20260809);
    for (let round = 0; round < 1000; round++) {
      const n = [5, 6, 8][Math.floor(rand() * 3)];
      const human = rand() < 0.5 ? "maker" : "breaker";
      const bias = rand() < 0.5 ? "1:1" : "1:2";
      await controller.newGame({ n, human, bias, first: "maker" });
      const pairs = allDiagonals(n);
      const clicks = 4 + Math.floor(rand() * 10);
      for (let c = 0; c < clicks; c++) {
        const pair = pairs[Math.floor(rand() * pairs.length)] as Pair;
        await controller.click(pair);
      }
    }
    expect(server.notYourTurn).toBe(0);
    expect(server.occupied).toBe(0);
  }, 30000);
});

describe("hints and replay", () => {
  it("stores hint marks and clears them after the next move", async () => {
    const { controller } = setup();
    await controller.newGame({ n: 6, human: "maker", bias: "1:1", first: "maker" });
    const hint = await controller.requestHint();
    expect(hint.length).toBe(1);
    expect(controller.hints).toEqual(hint);
    await controller.click(hint[0]);
    expect(controller.hints).toEqual([]);
  });

  it("frameAt(0) is the empty board; the last frame matches the state", async () => {
    const { controller } = setup();
    await controller.newGame({ n: 6, human: "maker", bias: "1:1", first: "maker" });
    await controller.click([0, 2]);
    await controller.click([0, 3]);
    const zero = controller.frameAt(0)!;
    expect(zero.maker).toEqual([]);
    expect(zero.breaker).toEqual([]);
    const last = controller.frameAt(controller.replaySteps())!;
    expect(last.maker).toEqual(controller.state!.maker);
    expect(last.breaker).toEqual(controller.state!.breaker);
  });
});
