"""A short end-to-end run on the pixel reacher, then evaluation and a learning curve.

Uses the desk preset with a reduced step budget so it finishes in a few
minutes; the numbers it prints are not expected to show a trained agent.

    python demos/short_training_run.py [total_steps]
"""
import sys
from pathlib import Path

from raif.cli import dispatch
from raif.config import load_config
from raif.trainer import evaluate, run_training

root = Path(__file__).resolve().parent.parent
steps = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
cfg = load_config(root / "configs" / "reacher_desk.txt").replace(total_steps=steps, checkpoint_every=0)
out = root / "demo_out" / "short_run"


def progress(step, metrics):
    if len(metrics.episodes) % 5 == 0:
        print(f"step {step:6d}  episodes {len(metrics.episodes):4d}  SR(last 50) {metrics.sr():.2f}")


metrics = run_training(cfg, out_dir=out, progress=progress)
print("evaluation:", {k: v for k, v in evaluate(out / "checkpoint", n_episodes=5).items() if k != "returns"})
dispatch(["plot", "--metrics", str(out / "metrics.jsonl"), "--out", str(out / "curves.svg"),
          "--series", "episode.return,update.wm_total", "--smooth", "5"])
