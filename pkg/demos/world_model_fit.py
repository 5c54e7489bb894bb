"""Fit the world model to a handful of reacher episodes and look at its reconstructions.

Records four scripted and four random episodes, trains only the world model
for a few hundred steps, and writes side-by-side frames (top: observed,
bottom: decoded from the filtered latent) to ``demo_out/recon.png``.

    python demos/world_model_fit.py [steps]
"""
import sys
from pathlib import Path

import numpy as np
import torch
from PIL import Image

from raif.config import load_config
from raif.envs import Reacher
from raif.num_core import symexp
from raif.self_revision import RevisionConfig
from raif.trainer import Agent, run_episode

steps = int(sys.argv[1]) if len(sys.argv) > 1 else 400
root = Path(__file__).resolve().parent.parent
cfg = load_config(root / "configs" / "reacher_desk.txt")
torch.manual_seed(0)
rng = np.random.default_rng(0)
env = Reacher(image_size=cfg.image_size)

episodes = []
for i in range(8):
    scripted = i % 2 == 0
    act = (lambda o, a: env.expert_action()) if scripted else (lambda o, a: rng.uniform(-1, 1, 2))
    episodes.append(run_episode(env, act, i, RevisionConfig(), expert=scripted))

stack = lambda key: torch.tensor(np.stack([getattr(e, key) for e in episodes]), dtype=torch.float32)
obs, action, reward, cont = stack("obs"), stack("action"), stack("reward"), stack("cont")

wm = Agent(cfg, 2).wm
opt = torch.optim.Adam(wm.parameters(), lr=cfg.lr_wm)
gen = torch.Generator().manual_seed(0)
for step in range(steps):
    b = rng.integers(0, len(episodes), cfg.batch_size)
    idx = rng.integers(0, obs.shape[1] - cfg.seq_len + 1, cfg.batch_size)[:, None] + np.arange(cfg.seq_len)
    batch = {"obs": obs[b[:, None], idx], "action": action[b[:, None], idx],
             "reward": reward[b[:, None], idx], "cont": cont[b[:, None], idx]}
    parts, _ = wm.loss(batch, generator=gen)
    opt.zero_grad()
    parts.total.backward()
    opt.step()
    if step % 100 == 0:
        print(f"step {step:4d}  " + "  ".join(f"{k} {v:.3f}" for k, v in parts.as_dict().items()))

with torch.no_grad():
    post, _ = wm.observe(obs[:1], action[:1], generator=gen)
    recon = symexp(wm.decode_heads(post)[0][0]).clamp(0, 1).numpy()
frames = [np.concatenate([o, r], 0) for o, r in zip(obs[0, ::10].numpy(), recon[::10])]
out = root / "demo_out"
out.mkdir(exist_ok=True)
Image.fromarray((np.concatenate(frames, 1) * 255).astype(np.uint8)).resize((80 * len(frames), 160), 0).save(
    out / "recon.png")
print("wrote", out / "recon.png")
