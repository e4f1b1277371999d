"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--envs 16] [--repeat 5] [--out results/bench.txt]

Both backends are loaded side by side, fed identical inputs and checked for
bitwise-equal outputs before timing.
"""

from __future__ import annotations

import argparse
import sys
import timeit

import numpy as np

from modnav.env import EnvConfig, VecEnv
from modnav.kernels import backends


def env_arrays(n_envs: int, seed: int = 0):
    cfg = EnvConfig()
    env = VecEnv(cfg, n_envs, seed=seed)
    env.reset()
    rng = np.random.default_rng(seed)
    return cfg, env, rng.normal(size=(n_envs, 2))


def make_cases(n_envs: int):
    cfg, env, actions = env_arrays(n_envs)
    rng = np.random.default_rng(1)
    T = 256
    rewards = rng.normal(size=(T, n_envs))
    values = rng.normal(size=(T, n_envs))
    dones = (rng.random((T, n_envs)) < 0.01).astype(np.float64)
    boot = rng.normal(size=n_envs)
    acts = rng.normal(size=(T * n_envs, 512)).astype(np.float32)

    def state():
        return (env.agent_pos.copy(), env.heading.copy(), env.food.copy(), env.obstacles.copy(),
                env.predator.copy(), env.step_count.copy())

    def step_case(mod):
        agent, heading, food, obstacles, predator, count = state()
        out = [np.zeros(n_envs), np.zeros(n_envs, dtype=np.int64), np.zeros(n_envs), np.zeros(n_envs)]
        mod.step_batch(agent, heading, food, obstacles, predator, count, actions,
                       cfg.world_half_extent, cfg.obstacle_radius, cfg.agent_radius, cfg.food_radius,
                       cfg.agent_speed_scale, cfg.turn_gain, cfg.predator_speed,
                       cfg.predator_penalty_radius, cfg.predator_proximity_radius,
                       cfg.obstacle_proximity_radius, cfg.max_steps, *out)
        return [agent, heading, predator, *out]

    def observe_case(mod):
        agent, heading, food, obstacles, predator, _ = state()
        out = np.zeros((n_envs, 10))
        mod.observe_batch(agent, heading, food, obstacles, predator, cfg.world_half_extent,
                          cfg.obstacle_radius, out)
        return [out]

    def gae_case(mod):
        return [np.asarray(mod.gae(rewards, values, dones, boot, 0.99, 0.95))]

    def topk_case(mod):
        return [np.asarray(mod.topk_mask(acts, 32))]

    return {
        f"step_batch (B={n_envs})": step_case,
        f"observe_batch (B={n_envs})": observe_case,
        f"gae (T=256, B={n_envs})": gae_case,
        f"topk_mask ({T * n_envs}x512, k=32)": topk_case,
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--envs", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--out", help="also write the table to this file")
    args = ap.parse_args(argv)

    mods = backends()
    if "cython" not in mods:
        print("compiled backend unavailable; build with `pip install -e . --no-build-isolation`",
              file=sys.stderr)
        return 1
    lines = [f"{'kernel':<34}{'python':>14}{'cython':>14}{'speedup':>10}"]
    for name, case in make_cases(args.envs).items():
        py_out, c_out = case(mods["python"]), case(mods["cython"])
        for a, b in zip(py_out, c_out):
            if a.tobytes() != b.tobytes():
                raise SystemExit(f"{name}: backends disagree")
        times = {}
        for key in ("python", "cython"):
            timer = timeit.Timer(lambda: case(mods[key]))
            n, _ = timer.autorange()
            times[key] = min(timer.repeat(args.repeat, n)) / n
        lines.append(f"{name:<34}{times['python'] * 1e6:>12.1f}us{times['cython'] * 1e6:>12.1f}us"
                     f"{times['python'] / times['cython']:>9.1f}x")
    text = "\n".join(lines)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
