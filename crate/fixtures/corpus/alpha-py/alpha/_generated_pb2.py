# -*- coding: utf-8 -*-
# Generated by the protocol buffer compiler.  DO NOT EDIT!
# source: alpha.proto

DESCRIPTOR = None
_MESSAGE = {"name": "Alpha", "fields": ["id", "label"]}
