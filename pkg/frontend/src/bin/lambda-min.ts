#!/usr/bin/env node
import { runFigure } from "../cli.js";

process.exit(runFigure("lambda_min", process.argv.slice(2)));
