#!/usr/bin/env node
// SMT-LIB2 front-end for the WebAssembly build of Z3 (npm package
// "z3-solver").  Reads a script from the file given as argv[2] (or stdin
// when absent) and prints Z3's output: sat/unsat/unknown plus any
// get-value responses.

'use strict';

const fs = require('fs');
const path = require('path');

function resolveZ3() {
  try {
    return require('z3-solver');
  } catch (e) {
    const { execSync } = require('child_process');
    const root = execSync('npm root -g').toString().trim();
    return require(path.join(root, 'z3-solver'));
  }
}

async function main() {
  const file = process.argv[2];
  const script = file ? fs.readFileSync(file, 'utf8') : fs.readFileSync(0, 'utf8');
  const { Z3 } = await resolveZ3().init();
  const cfg = Z3.mk_config();
  Z3.set_param_value(cfg, 'model', 'true');
  const ctx = Z3.mk_context(cfg);
  const out = await Z3.eval_smtlib2_string(ctx, script);
  process.stdout.write(out.endsWith('\n') ? out : out + '\n');
  process.exit(0);
}

main().catch((e) => {
  console.error(String(e));
  process.exit(1);
});
