#!/usr/bin/env node
// DIMACS CNF front-end for the WebAssembly build of Z3 (npm package
// "z3-solver").  Reads a CNF file, solves it with Z3's Boolean engine and
// prints SAT-competition style output:
//   s SATISFIABLE / s UNSATISFIABLE
//   v <lit> ... 0            (on satisfiable instances)
// Exit codes follow solver convention: 10 = sat, 20 = unsat, 1 = error.

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

function parseDimacs(text) {
  let numVars = 0;
  const clauses = [];
  let cur = [];
  for (const rawLine of text.split('\n')) {
    const line = rawLine.trim();
    if (line === '' || line.startsWith('c')) continue;
    if (line.startsWith('p')) {
      const parts = line.split(/\s+/);
      numVars = parseInt(parts[2], 10);
      continue;
    }
    for (const tok of line.split(/\s+/)) {
      const lit = parseInt(tok, 10);
      if (lit === 0) {
        clauses.push(cur);
        cur = [];
      } else {
        cur.push(lit);
      }
    }
  }
  if (cur.length > 0) clauses.push(cur);
  return { numVars, clauses };
}

function toSmt2(numVars, clauses) {
  const parts = [];
  for (let v = 1; v <= numVars; v++) parts.push(`(declare-const p${v} Bool)`);
  for (const cl of clauses) {
    const lits = cl.map((l) => (l > 0 ? `p${l}` : `(not p${-l})`));
    parts.push(cl.length === 1 ? `(assert ${lits[0]})` : `(assert (or ${lits.join(' ')}))`);
  }
  parts.push('(check-sat)');
  return parts.join('\n');
}

async function main() {
  const file = process.argv[2];
  if (!file) {
    console.error('usage: z3dimacs.js <file.cnf>');
    process.exit(1);
  }
  const { numVars, clauses } = parseDimacs(fs.readFileSync(file, 'utf8'));
  const { Z3 } = await resolveZ3().init();
  const cfg = Z3.mk_config();
  Z3.set_param_value(cfg, 'model', 'true');
  const ctx = Z3.mk_context(cfg);

  const verdict = (await Z3.eval_smtlib2_string(ctx, toSmt2(numVars, clauses))).trim();
  if (verdict === 'unsat') {
    console.log('s UNSATISFIABLE');
    process.exit(20);
  }
  if (verdict !== 'sat') {
    console.log('s UNKNOWN');
    process.exit(1);
  }

  // Pull the model one chunk of variables at a time via get-value.
  const values = new Array(numVars + 1).fill(false);
  const chunk = 256;
  for (let lo = 1; lo <= numVars; lo += chunk) {
    const hi = Math.min(lo + chunk - 1, numVars);
    const names = [];
    for (let v = lo; v <= hi; v++) names.push(`p${v}`);
    const out = await Z3.eval_smtlib2_string(ctx, `(get-value (${names.join(' ')}))`);
    for (const m of out.matchAll(/\(p(\d+)\s+(true|false)\)/g)) {
      values[parseInt(m[1], 10)] = m[2] === 'true';
    }
  }
  console.log('s SATISFIABLE');
  let line = 'v';
  for (let v = 1; v <= numVars; v++) {
    line += ' ' + (values[v] ? v : -v);
    if (line.length > 70) {
      console.log(line);
      line = 'v';
    }
  }
  console.log(line + ' 0');
  process.exit(10);
}

main().catch((e) => {
  console.error(String(e));
  process.exit(1);
});
