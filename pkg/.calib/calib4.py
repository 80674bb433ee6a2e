import sys, os, time, json
sys.path.insert(0, "/root/pkg/src")
from concurrent.futures import ProcessPoolExecutor
from softcl import datagen, evaluation, config

DS = "/root/pkg/.calib/runs_default.bin"
if not os.path.exists(DS):
    datagen.generate_dataset(datagen.gen_config_from_run(config.RunConfig()), DS)

def task(args):
    variant, seed = args
    cfg = config.with_updates(config.RunConfig(), loss_variant=variant, seed=seed)
    ds = datagen.load_dataset(DS)
    t0 = time.time()
    micro, macro = evaluation.run_pretrain_probe(ds, cfg)
    return {"variant": variant, "seed": seed, "micro": micro, "mins": (time.time() - t0) / 60}

grid = [(v, s) for s in (0, 1) for v in ("contrast_only", "contrast_supcon", "contrast_softcon")]
if __name__ == "__main__":
    with ProcessPoolExecutor(max_workers=2) as pool:
        results = []
        for r in pool.map(task, grid):
            results.append(r)
            print(json.dumps(r), flush=True)
    json.dump(results, open("/root/pkg/.calib/calib4.json", "w"), indent=1)
