/**
 * Render scheduling: debounce parameter changes, keep at most one render
 * request in flight, and skip requests whose state hash matches the last
 * completed one. Timers and the clock are injectable so tests can drive
 * the scheduler synchronously.
 */

export interface SchedulerHooks {
  /** Perform the render for this state hash; resolves when the image is up. */
  run: (hash: string) => Promise<void>;
  setTimeout?: (fn: () => void, ms: number) => unknown;
  clearTimeout?: (handle: unknown) => void;
}

export const DEBOUNCE_MS = 150;

export class RenderScheduler {
  private hooks: Required<SchedulerHooks>;
  private timer: unknown = null;
  private inFlight = false;
  /** Hash queued behind the in-flight request, if any. */
  private pendingHash: string | null = null;
  private completedHash: string | null = null;
  /** Counts started runs; tests use it to observe coalescing. */
  runCount = 0;

  constructor(hooks: SchedulerHooks) {
    this.hooks = {
      run: hooks.run,
      setTimeout: hooks.setTimeout ?? ((fn, ms) => setTimeout(fn, ms)),
      clearTimeout: hooks.clearTimeout ?? ((h) => clearTimeout(h as number)),
    };
  }

  get busy(): boolean {
    return this.inFlight;
  }

  /** Called on every state change; restarts the debounce window. */
  request(hash: string): void {
    if (this.timer !== null) this.hooks.clearTimeout(this.timer);
    this.timer = this.hooks.setTimeout(() => {
      this.timer = null;
      this.dispatch(hash);
    }, DEBOUNCE_MS);
  }

  /** Skip the debounce window (initial load, preset buttons). */
  requestNow(hash: string): void {
    if (this.timer !== null) {
      this.hooks.clearTimeout(this.timer);
      this.timer = null;
    }
    this.dispatch(hash);
  }

  private dispatch(hash: string): void {
    if (hash === this.completedHash && !this.inFlight) return;
    if (this.inFlight) {
      // Newest state supersedes anything already queued.
      this.pendingHash = hash;
      return;
    }
    this.start(hash);
  }

  private start(hash: string): void {
    this.inFlight = true;
    this.runCount += 1;
    this.hooks
      .run(hash)
      .then(() => {
        this.completedHash = hash;
      })
      .catch(() => {
        // Failed renders leave completedHash stale so a retry re-runs.
      })
      .finally(() => {
        this.inFlight = false;
        const next = this.pendingHash;
        this.pendingHash = null;
        if (next !== null && next !== this.completedHash) this.start(next);
      });
  }
}
