import sys, os, time, json
sys.path.insert(0, "/root/pkg/src")
from concurrent.futures import ProcessPoolExecutor
from softcl import datagen, evaluation, config

DS_PATH = "/root/pkg/.calib/default.bin"

def task(args):
    variant, lr, seed = args
    cfg = config.with_updates(config.RunConfig(), loss_variant=variant, base_lr=lr, seed=seed)
    ds = datagen.load_dataset(DS_PATH)
    t0 = time.time()
    micro, macro = evaluation.run_pretrain_probe(ds, cfg)
    return {"variant": variant, "lr": lr, "seed": seed, "micro": micro, "mins": (time.time()-t0)/60}

grid = [(v, lr, 0) for lr in (2e-3, 1e-3) for v in ("contrast_only", "contrast_supcon", "contrast_softcon")]
with ProcessPoolExecutor(max_workers=2) as pool:
    results = []
    for r in pool.map(task, grid):
        results.append(r)
        print(json.dumps(r), flush=True)
json.dump(results, open("/root/pkg/.calib/calib2.json", "w"), indent=1)
