import sys, os, time, json
sys.path.insert(0, "/root/pkg/src")
from concurrent.futures import ProcessPoolExecutor
from softcl import datagen, evaluation, config

def task(args):
    tag, ampj, variant, jit = args
    cfg = config.with_updates(config.RunConfig(), loss_variant=variant, seed=0,
                              jitter_lo=jit[0], jitter_hi=jit[1])
    gcfg = datagen.GenConfig(class_amp_jitter=ampj)
    ds_path = f"/root/pkg/.calib/ds_amp{ampj}.bin"
    if not os.path.exists(ds_path):
        datagen.generate_dataset(gcfg, ds_path)
    ds = datagen.load_dataset(ds_path)
    t0 = time.time()
    micro, macro = evaluation.run_pretrain_probe(ds, cfg)
    return {"tag": tag, "ampj": ampj, "variant": variant, "jit": jit, "micro": micro,
            "mins": (time.time()-t0)/60}

grid = [
    ("A", 0.25, "contrast_only",    (0.8, 1.2)),
    ("A", 0.25, "contrast_supcon",  (0.8, 1.2)),
    ("A", 0.25, "contrast_softcon", (0.8, 1.2)),
    ("B", 0.25, "contrast_only",    (0.6, 1.4)),
    ("B", 0.25, "contrast_softcon", (0.6, 1.4)),
    ("C", 0.40, "contrast_only",    (0.8, 1.2)),
    ("C", 0.40, "contrast_softcon", (0.8, 1.2)),
]
# pre-generate datasets serially to avoid worker races
for ampj in {0.25, 0.40}:
    p = f"/root/pkg/.calib/ds_amp{ampj}.bin"
    if not os.path.exists(p):
        datagen.generate_dataset(datagen.GenConfig(class_amp_jitter=ampj), p)
with ProcessPoolExecutor(max_workers=2) as pool:
    results = []
    for r in pool.map(task, grid):
        results.append(r)
        print(json.dumps(r), flush=True)
json.dump(results, open("/root/pkg/.calib/calib3.json", "w"), indent=1)
