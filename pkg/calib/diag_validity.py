"""Failure-mode histogram for stage-1 countdown samples."""
import sys
import time
from collections import Counter
from random import Random

import torch

sys.path.insert(0, "/root/pkg/src")
torch.set_num_threads(1)

from thoughtflow.evaluate import countdown_samples
from thoughtflow.inference import DenoiseConfig
from thoughtflow.rng import mix_seed
from thoughtflow.tasks import canonicalize_script, generate_countdown, split_countdown, verify_solution
from thoughtflow.training import load_reasoner_checkpoint, load_vae_checkpoint
from thoughtflow.training import vocab_for_dataset

STAGE1 = sys.argv[1] if len(sys.argv) > 1 else "/root/pkg/calib/out4/stage1.tfck"

def log(msg):
    print(f"[{time.strftime('%H:%M:%S')}] {msg}", flush=True)

rng = Random(0)
insts = generate_countdown(50000, rng, value_range=(1, 40), target_range=(1, 80))
ds = split_countdown(insts, rng)
vocab = vocab_for_dataset(ds)
vae, _, _ = load_vae_checkpoint("/root/pkg/calib/out7/vae.tfck")
model, _, _ = load_reasoner_checkpoint(STAGE1)

cfg = DenoiseConfig(steps=50, answer_mode="none", max_blocks=1)
reasons = Counter()
shown = 0
for qi, inst in enumerate(ds.test[:8]):
    texts = countdown_samples(model, vae, vocab, inst, 25, cfg, mix_seed(0, qi))
    print(f"--- q{qi}: {inst.question_text()!r} oracle={inst.solutions[:2]}")
    for t in texts[:6]:
        canon = canonicalize_script(t)
        res = verify_solution(inst.numbers, inst.target, canon)
        tag = "OK" if res else res.reason
        print(f"    [{tag:10s}] {canon!r}")
    for t in texts:
        res = verify_solution(inst.numbers, inst.target, canonicalize_script(t))
        reasons["ok" if res else res.reason] += 1
log(f"reason histogram over {sum(reasons.values())} samples: {dict(reasons)}")
