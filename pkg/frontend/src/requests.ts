/** Debounced, superseding request dispatch.
 *
 * Each panel keeps at most one in-flight request; a response is delivered
 * only if no newer request has been dispatched since (stale responses are
 * dropped, so displayed values always match the latest state).
 */

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = undefined;
      fn(...args);
    }, ms);
  };
}

export class RequestGate<T> {
  private lastId = 0;

  /** Dispatch a request; resolve with its result only if still the newest. */
  async dispatch(request: () => Promise<T>): Promise<T | undefined> {
    this.lastId += 1;
    const id = this.lastId;
    const result = await request();
    return id === this.lastId ? result : undefined;
  }

  /** Drop any in-flight response without sending a new request. */
  invalidate(): void {
    this.lastId += 1;
  }
}
