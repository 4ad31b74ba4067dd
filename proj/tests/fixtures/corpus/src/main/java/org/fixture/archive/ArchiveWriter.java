package org.fixture.archive;

import java.io.File;
import java.io.FileOutputStream;
import java.io.OutputStream;

import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

public class ArchiveWriter {
    private static final Logger LOG = LoggerFactory.getLogger(ArchiveWriter.class);

    public OutputStream open(File archive) throws Exception {
        LOG.info("Opening archive {} for reading", archive);
        return new FileOutputStream(archive);
    }
}
