import sys, os, time, itertools, json
sys.path.insert(0, "/root/pkg/src")
import numpy as np
from concurrent.futures import ProcessPoolExecutor
from softcl import datagen, training, evaluation, config

DS_PATH = "/root/pkg/.calib/default.bin"
cfg0 = config.RunConfig()
if not os.path.exists(DS_PATH):
    datagen.generate_dataset(datagen.gen_config_from_run(cfg0), DS_PATH)

def task(args):
    lr, m = args
    cfg = config.with_updates(config.RunConfig(), base_lr=lr, momentum=m, seed=0)
    ds = datagen.load_dataset(DS_PATH)
    t0 = time.time()
    micro, macro = evaluation.run_pretrain_probe(ds, cfg)
    return {"lr": lr, "m": m, "micro": micro, "macro": macro, "mins": (time.time()-t0)/60}

grid = list(itertools.product([2e-3, 5e-3, 1e-2], [0.9, 0.99]))
results = []
with ProcessPoolExecutor(max_workers=2) as pool:
    for r in pool.map(task, grid):
        results.append(r)
        print(json.dumps(r), flush=True)
json.dump(results, open("/root/pkg/.calib/calib1.json", "w"), indent=1)
