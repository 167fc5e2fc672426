/** Debounce timing and request supersession. */

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { debounce, RequestGate } from "../src/requests.js";

describe("debounce", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("fires once after the quiet period with the last arguments", () => {
    const calls: number[] = [];
    const fn = debounce((v: number) => calls.push(v), 150);
    fn(1);
    vi.advanceTimersByTime(100);
    fn(2);
    vi.advanceTimersByTime(100);
    fn(3);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(150);
    expect(calls).toEqual([3]);
  });

  it("fires again for a separate burst", () => {
    const calls: number[] = [];
    const fn = debounce((v: number) => calls.push(v), 150);
    fn(1);
    vi.advanceTimersByTime(200);
    fn(2);
    vi.advanceTimersByTime(200);
    expect(calls).toEqual([1, 2]);
  });
});

function deferred<T>() {
  let resolve!: (value: T) => void;
  const promise = new Promise<T>((r) => (resolve = r));
  return { promise, resolve };
}

describe("RequestGate", () => {
  it("delivers the newest response and drops superseded ones", async () => {
    const gate = new RequestGate<string>();
    const first = deferred<string>();
    const second = deferred<string>();

    const delivery1 = gate.dispatch(() => first.promise);
    const delivery2 = gate.dispatch(() => second.promise);

    // Out-of-order completion: the stale response resolves last.
    second.resolve("new");
    first.resolve("old");

    expect(await delivery2).toBe("new");
    expect(await delivery1).toBeUndefined();
  });

  it("invalidate drops an in-flight response", async () => {
    const gate = new RequestGate<string>();
    const pending = deferred<string>();
    const delivery = gate.dispatch(() => pending.promise);
    gate.invalidate();
    pending.resolve("late");
    expect(await delivery).toBeUndefined();
  });

  it("sequential requests each deliver", async () => {
    const gate = new RequestGate<number>();
    expect(await gate.dispatch(async () => 1)).toBe(1);
    expect(await gate.dispatch(async () => 2)).toBe(2);
  });
});
